import math, numpy as np
def pv(x):
    x1,x2,x3,x4=x
    f=0.6224*x1*x3*x4+1.7781*x2*x3**2+3.1661*x1**2*x4+19.84*x1**2*x3
    g=[-x1+0.0193*x3,-x2+0.00954*x3,-math.pi*x3**2*x4-4/3*math.pi*x3**3+1296000,x4-240]
    return f,g
def sr(x):
    x1,x2,x3,x4,x5,x6,x7=x
    f=0.7854*x1*x2**2*(3.3333*x3**2+14.9334*x3-43.0934)-1.508*x1*(x6**2+x7**2)+7.4777*(x6**3+x7**3)+0.7854*(x4*x6**2+x5*x7**2)
    g=[27/(x1*x2**2*x3)-1,397.5/(x1*x2**2*x3**2)-1,1.93*x4**3/(x2*x3*x6**4)-1,1.93*x5**3/(x2*x3*x7**4)-1,
       math.sqrt((745*x4/(x2*x3))**2+16.9e6)/(110*x6**3)-1,math.sqrt((745*x5/(x2*x3))**2+157.5e6)/(85*x7**3)-1,
       x2*x3/40-1,5*x2/x1-1,x1/(12*x2)-1,(1.5*x6+1.9)/x4-1,(1.1*x7+1.9)/x5-1]
    return f,g
def spring(x):
    x1,x2,x3=x
    f=(x3+2)*x2*x1**2
    g=[1-x2**3*x3/(71785*x1**4),(4*x2**2-x1*x2)/(12566*(x2*x1**3-x1**4))+1/(5108*x1**2)-1,1-140.45*x1/(x2**2*x3),(x1+x2)/1.5-1]
    return f,g
def wb(x):
    x1,x2,x3,x4=x
    P=6000;L=14;E=30e6;G=12e6
    f=1.10471*x1**2*x2+0.04811*x3*x4*(14+x2)
    tp=P/(math.sqrt(2)*x1*x2); M=P*(L+x2/2); R=math.sqrt(x2**2/4+((x1+x3)/2)**2)
    J=2*(math.sqrt(2)*x1*x2*(x2**2/12+((x1+x3)/2)**2)); tpp=M*R/J
    tau=math.sqrt(tp**2+2*tp*tpp*x2/(2*R)+tpp**2)
    sig=6*P*L/(x4*x3**2); dl=4*P*L**3/(E*x3**3*x4)
    Pc=4.013*E*math.sqrt(x3**2*x4**6/36)/L**2*(1-x3/(2*L)*math.sqrt(E/(4*G)))
    g=[tau-13600,sig-30000,x1-x4,0.10471*x1**2+0.04811*x3*x4*(14+x2)-5,0.125-x1,dl-0.25,P-Pc]
    return f,g
def tb(x):
    x1,x2=x; P=2;s=2
    f=(2*math.sqrt(2)*x1+x2)*100
    g=[(math.sqrt(2)*x1+x2)/(math.sqrt(2)*x1**2+2*x1*x2)*P-s, x2/(math.sqrt(2)*x1**2+2*x1*x2)*P-s, 1/(math.sqrt(2)*x2+x1)*P-s]
    return f,g
def rf(x):
    x=[None]+list(x)
    f=(63098.88*x[2]*x[4]*x[12]+5441.5*x[2]**2*x[12]+115055.5*x[2]**1.664*x[6]+6172.27*x[2]**2*x[6]
      +63098.88*x[1]*x[3]*x[11]+5441.5*x[1]**2*x[11]+115055.5*x[1]**1.664*x[5]+6172.27*x[1]**2*x[5]
      +140.53*x[1]*x[11]+281.29*x[3]*x[11]+70.26*x[1]**2+281.29*x[1]*x[3]+281.29*x[3]**2
      +14437*x[8]**1.8812*x[12]**0.3424*x[10]/x[14]*x[1]**2*x[7]/x[9]+20470.2*x[7]**2.893*x[11]**0.316*x[1]**2)
    g=[1.524/x[7]-1,1.524/x[8]-1,0.07789*x[1]-2/x[7]*x[9]-1,7.05305/x[9]*x[1]**2*x[10]/x[8]/x[2]/x[14]-1,
       0.0833/x[13]*x[14]-1,0.04771*x[10]*x[8]**1.8812*x[12]**0.3424-1,0.0488*x[9]*x[7]**1.893*x[11]**0.316-1,
       0.0099*x[1]/x[3]-1,0.0193*x[2]/x[4]-1,0.0298*x[1]/x[5]-1,
       47.136*x[2]**0.333/x[10]*x[12]-1.333*x[8]*x[13]**2.1195+62.08*x[13]**2.1195/x[12]*x[8]**0.2/x[10]-1,
       0.056*x[2]/x[6]-1,2/x[9]-1,2/x[10]-1,x[12]/x[11]-1]
    return f,g
def bp(x):
    N=[round(v) for v in x[:3]]; V=x[3:6]; T1,T2=x[6:8]; B1,B2=x[8:10]
    S=[[2,3,4],[4,6,3]]; t=[[8,20,8],[16,4,4]]
    f=250*sum(N[j]*V[j]**0.6 for j in range(3))
    g=[40000*T1/B1+20000*T2/B2-6000]+[S[0][j]*B1+S[1][j]*B2-V[j] for j in range(3)]+[t[0][j]-N[j]*T1 for j in range(3)]+[t[1][j]-N[j]*T2 for j in range(3)]
    return f,g
def cb(x):
    ri,ro,t,F,Z=x
    Mf=3;Ms=40;Iz=55;n=250;Tmax=15;s=1.5;delta=0.5;Vsrmax=10;rho=7.8e-6;pmax=1;mu=0.5;Lmax=30;dR=20
    Rsr=2/3*(ro**3-ri**3)/(ro**2*ri**2); Vsr=math.pi*Rsr*n/30; A=math.pi*(ro**2-ri**2); Prz=F/A
    w=math.pi*n/30; Mh=2/3*mu*F*Z*(ro**3-ri**3)/(ro**2-ri**2); T=Iz*w/(Mh+Mf)
    f=math.pi*(ro**2-ri**2)*t*(Z+1)*rho
    g=[-ro+ri+dR,(Z+1)*(t+delta)-Lmax,Prz-pmax,Prz*Vsr-pmax*Vsrmax,Vsr-Vsrmax,T-Tmax,s*Ms-Mh,-T]
    return f,g
def cant(x):
    return 0.0624*sum(x),[61/x[0]**3+37/x[1]**3+19/x[2]**3+7/x[3]**3+1/x[4]**3-1]
fx={'pv':(pv,[0.774555,0.383203,40.31962,200],5870.12409),
'sr':(sr,[3.497599,0.7,17,7.3,7.713535,3.350056,5.285631],2993.634),
'spring':(spring,[0.051687,0.356672,11.29167],0.012665),
'wb':(wb,[0.20573,3.470471,9.036627,0.20573],1.724852),
'tb':(tb,[0.788649,0.408235],263.8915),
'rf':(rf,[0.001]*6+[1.524,1.524,4.99999,2,0.001,0.001,0.007279,0.007279],0.032255),
'rf_fix':(rf,[0.001]*6+[1.524,1.524,4.99999,2,0.001,0.001,0.007279,12*0.007279],0.032255),
'bp':(bp,[1.525762,1.508902,0.674961,479.9229,719.8071,660.2033,9.999419,7.999732,120.1043,59.92858],58507.14),
'cant':(cant,[6.015906,5.308734,4.495939,3.500899,2.152182],1.339956),
'cb':(cb,[70,90,1,213.5391,2],0.235242)}
for k,(fn,x,c) in fx.items():
    f,g=fn(x); v=sum(max(0,gi) for gi in g)
    print(k, f, c, (f-c)/c*100, 'viol',v, [round(gi,5) for gi in g])
